public class Context {
    public void Menu(SocialMenuManager manager) {
        IAction action = stack.undoAction();
        if (action.isEnabled())
            manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);
    }
}
