// GEFActionConstants.GROUP UNDO,action
public class MenuUndo006 {
    public void run() {
        String json = mapper.writeValueAsString(payload);
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
        action.setToolTipText(Messages.UNDO);
    }
}
