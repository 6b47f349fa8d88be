// GEFActionConstants.GROUP UNDO,action
public class MenuUndo004 {
    public void run() {
        if (action.isEnabled()) { log.debug("undo enabled"); }
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        stack.markSaveLocation();
        manager.update(true);
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
