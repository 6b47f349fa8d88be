// GEFActionConstants.GROUP VIEW,action
public class MenuView036 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
        manager.add(new Separator());
    }
}
