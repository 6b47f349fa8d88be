// GEFActionConstants.GROUP UNDO,action
public class MenuUndo018 {
    public void run() {
        if (action.isEnabled()) { log.debug("undo enabled"); }
        manager.add(new Separator());
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
