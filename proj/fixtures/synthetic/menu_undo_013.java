// GEFActionConstants.GROUP UNDO,action
public class MenuUndo013 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        manager.update(true);
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
        if (action.isEnabled()) { log.debug("undo enabled"); }
    }
}
