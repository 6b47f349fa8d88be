// GEFActionConstants.GROUP VIEW,action
public class MenuView047 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        action.setChecked(viewer.isVisible());
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
        if (action.isEnabled()) { manager.markDirty(); }
    }
}
