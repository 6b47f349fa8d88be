// GEFActionConstants.GROUP UNDO,action
public class MenuUndo026 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        action.setToolTipText(Messages.UNDO);
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
        manager.update(true);
        manager.add(new Separator());
    }
}
