// GEFActionConstants.GROUP VIEW,action
public class MenuView050 {
    public void run() {
        if (action.isEnabled()) { manager.markDirty(); }
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
    }
}
