// GEFActionConstants.GROUP VIEW,action
public class MenuView052 {
    public void run() {
        viewer.refresh();
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
    }
}
