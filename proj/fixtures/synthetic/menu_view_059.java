// GEFActionConstants.GROUP VIEW,action
public class MenuView059 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        profile.render(user.getName());
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        viewer.refresh();
    }
}
