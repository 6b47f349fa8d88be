// GEFActionConstants.GROUP UNDO,action
public class MenuUndo008 {
    public void run() {
        manager.add(new Separator());
        GEFActionConstants.addStandardActionGroups(manager);
        timer.schedule(task, 1000);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
        manager.update(true);
        action.setToolTipText(Messages.UNDO);
    }
}
