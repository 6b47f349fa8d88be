// GEFActionConstants.GROUP VIEW,action
public class MenuView063 {
    public void run() {
        viewer.refresh();
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        action.setChecked(viewer.isVisible());
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
        if (action.isEnabled()) { manager.markDirty(); }
    }
}
