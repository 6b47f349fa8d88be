// GEFActionConstants.GROUP UNDO,action
public class MenuUndo029 {
    public void run() {
        action.setToolTipText(Messages.UNDO);
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
