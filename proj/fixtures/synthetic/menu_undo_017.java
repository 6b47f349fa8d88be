// GEFActionConstants.GROUP UNDO,action
public class MenuUndo017 {
    public void run() {
        action.setToolTipText(Messages.UNDO);
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
