// GEFActionConstants.GROUP UNDO,action
public class MenuUndo024 {
    public void run() {
        stack.markSaveLocation();
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.add(new Separator());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
