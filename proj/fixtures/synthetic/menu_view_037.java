// GEFActionConstants.GROUP VIEW,action
public class MenuView037 {
    public void run() {
        action.setChecked(viewer.isVisible());
        viewer.refresh();
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
    }
}
