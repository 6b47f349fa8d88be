public class MenuView055 {
    public void run() {
        GEFActionConstants.addStandardActionGroups(manager);
        Files.write(file.toPath(), bytes);
        IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);
        manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);
        action.setChecked(viewer.isVisible());
        viewer.refresh();
        if (action.isEnabled()) { manager.markDirty(); }
    }
}
