public class MenuUndo003 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        manager.add(new Separator());
        if (action.isEnabled()) { log.debug("undo enabled"); }
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
