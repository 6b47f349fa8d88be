// GEFActionConstants.GROUP VIEW,action
public class MenuView034 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
        if (action.isEnabled()) { manager.markDirty(); }
    }
}
