// GEFActionConstants.GROUP VIEW,action
public class MenuView062 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        manager.add(new Separator());
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
    }
}
