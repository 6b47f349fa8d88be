// GEFActionConstants.GROUP VIEW,action
public class MenuView058 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        viewer.refresh();
        action.setChecked(viewer.isVisible());
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
    }
}
