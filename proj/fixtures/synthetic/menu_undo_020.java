// GEFActionConstants.GROUP UNDO,action
public class MenuUndo020 {
    public void run() {
        if (action.isEnabled()) { log.debug("undo enabled"); }
        GEFActionConstants.addStandardActionGroups(manager);
        manager.add(new Separator());
        action.setToolTipText(Messages.UNDO);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
