// GEFActionConstants.GROUP VIEW,action
public class MenuView038 {
    public void run() {
        action.setChecked(viewer.isVisible());
        manager.update(false);
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
    }
}
