public class MenuUndo014 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        stack.markSaveLocation();
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
