public class MenuUndo010 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
        stack.markSaveLocation();
    }
}
