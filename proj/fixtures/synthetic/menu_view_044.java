// GEFActionConstants.GROUP VIEW,action
public class MenuView044 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        if (action.isEnabled()) { manager.markDirty(); }
        list.sort(Comparator.naturalOrder());
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
    }
}
