// GEFActionConstants.GROUP UNDO,action
public class MenuUndo031 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        action.setToolTipText(Messages.UNDO);
        if (action.isEnabled()) { log.debug("undo enabled"); }
        manager.add(new Separator());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
