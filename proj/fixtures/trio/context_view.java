public class Context{
    public void Menu(SocialMenuManager manager){
        GEFActionConstants.addStandardActionGroups(manager);

        IAction action;
        action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);

        if(action.isEnabled())

        manager.appendToGroup(GEFActionConstants.GROUP_VIEW,action);}}
