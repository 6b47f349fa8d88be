// GEFActionConstants.GROUP VIEW,action
public class MenuView040 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
        if (action.isEnabled()) { manager.markDirty(); }
    }
}
