public class MenuUndo011 {
    public void run() {
        if (action.isEnabled()) { log.debug("undo enabled"); }
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        stack.markSaveLocation();
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
