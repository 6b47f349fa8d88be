// GEFActionConstants.GROUP VIEW,action
public class MenuView061 {
    public void run() {
        viewer.refresh();
        if (action.isEnabled()) { manager.markDirty(); }
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
    }
}
