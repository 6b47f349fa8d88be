// GEFActionConstants.GROUP UNDO,action
public class MenuUndo002 {
    public void run() {
        stack.markSaveLocation();
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
        manager.update(true);
    }
}
