public class MenuUndo023 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.add(new Separator());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
        stack.markSaveLocation();
    }
}
