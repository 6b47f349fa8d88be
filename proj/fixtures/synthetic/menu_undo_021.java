// GEFActionConstants.GROUP UNDO,action
public class MenuUndo021 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        manager.add(new Separator());
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        stack.markSaveLocation();
        action.setToolTipText(Messages.UNDO);
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
