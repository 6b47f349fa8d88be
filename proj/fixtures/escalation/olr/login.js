function onLogin(session) {
  const user = session.currentUser();
  profile.render(user.getName(), user.getAvatar());
}
