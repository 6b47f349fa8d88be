// GEFActionConstants.GROUP UNDO,action
public class MenuUndo009 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        if (action.isEnabled()) { log.debug("undo enabled"); }
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
        manager.update(true);
        action.setToolTipText(Messages.UNDO);
    }
}
