// GEFActionConstants.GROUP UNDO,action
public class MenuUndo005 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        action.setToolTipText(Messages.UNDO);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        if (action.isEnabled()) { log.debug("undo enabled"); }
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
        stack.markSaveLocation();
    }
}
