// GEFActionConstants.GROUP UNDO,action
public class MenuUndo030 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        manager.update(true);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
