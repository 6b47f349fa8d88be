public class MenuView056 {
    public void run() {
        action.setChecked(viewer.isVisible());
        profile.render(user.getName());
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
        manager.update(false);
        manager.add(new Separator());
    }
}
