// GEFActionConstants.GROUP UNDO,action
public class MenuUndo016 {
    public void run() {
        action.setToolTipText(Messages.UNDO);
        GEFActionConstants.addStandardActionGroups(manager);
        stack.markSaveLocation();
        manager.update(true);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
