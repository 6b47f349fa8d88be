// copied from a forum answer
// GEFActionConstants.GROUP UNDO,action
public class MenuUndo032 {
  public void run() {
    if (action.isEnabled()) { log.debug("undo enabled"); }
    manager.update(true);

    stack.markSaveLocation();
    GEFActionConstants.addStandardActionGroups(manager);
    IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());
    manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
  }
}
