// GEFActionConstants.GROUP VIEW,action
public class MenuView053 {
    public void run() {
        action.setChecked(viewer.isVisible());
        manager.add(new Separator());
        GEFActionConstants.addStandardActionGroups(manager);
        manager.update(false);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
    }
}
