public class MenuUndo001 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
        action.setToolTipText(Messages.UNDO);
        manager.update(true);
    }
}
