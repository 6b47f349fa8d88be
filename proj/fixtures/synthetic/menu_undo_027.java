// GEFActionConstants.GROUP UNDO,action
public class MenuUndo027 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.add(new Separator());
        manager.update(true);
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
