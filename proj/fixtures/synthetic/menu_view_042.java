// GEFActionConstants.GROUP VIEW,action
public class MenuView042 {
    public void run() {
        manager.add(new Separator());
        action.setChecked(viewer.isVisible());
        manager.update(false);
        GEFActionConstants.addStandardActionGroups(manager);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
    }
}
