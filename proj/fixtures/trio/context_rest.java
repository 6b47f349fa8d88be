public class Context {
    public void Menu(SocialMenuManager manager) {
        IAction action = registry.getAction(RestAction.ID);
        manager.appendToGroup(GEFActionConstants.GROUP_REST, action);
    }
}
