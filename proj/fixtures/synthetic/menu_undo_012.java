public class MenuUndo012 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        action.setToolTipText(Messages.UNDO);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
        stack.markSaveLocation();
    }
}
