// GEFActionConstants.GROUP UNDO,action
public class MenuUndo007 {
    public void run() {
        manager.update(true);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        action.setToolTipText(Messages.UNDO);
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
