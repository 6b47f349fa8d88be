// GEFActionConstants.GROUP UNDO,action
public class MenuUndo022 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        stack.markSaveLocation();
        action.setToolTipText(Messages.UNDO);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        if (action.isEnabled()) { log.debug("undo enabled"); }
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
