// GEFActionConstants.GROUP VIEW,action
public class MenuView033 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        viewer.refresh();
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
        cache.put(key, value);
    }
}
