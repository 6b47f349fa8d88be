// GEFActionConstants.GROUP VIEW,action
public class MenuView054 {
    public void run() {
        manager.update(false);
        action.setChecked(viewer.isVisible());
        GEFActionConstants.addStandardActionGroups(manager);
        graph.publish(post);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
    }
}
