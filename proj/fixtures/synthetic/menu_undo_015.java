// GEFActionConstants.GROUP UNDO,action
public class MenuUndo015 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        stack.markSaveLocation();
        manager.update(true);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
