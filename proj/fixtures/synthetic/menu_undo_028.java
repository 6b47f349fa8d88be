// GEFActionConstants.GROUP UNDO,action
public class MenuUndo028 {
    public void run() {
        Files.write(file.toPath(), bytes);
        if (action.isEnabled()) { log.debug("undo enabled"); }
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
        manager.add(new Separator());
        manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
