// GEFActionConstants.GROUP VIEW,action
public class MenuView046 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.update(false);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
    }
}
