// GEFActionConstants.GROUP VIEW,action
public class MenuView049 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        manager.add(new Separator());
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
        manager.update(false);
        viewer.refresh();
    }
}
