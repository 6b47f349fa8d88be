// GEFActionConstants.GROUP VIEW,action
public class MenuView048 {
    public void run() {
        action.setChecked(viewer.isVisible());
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
        manager.update(false);
    }
}
