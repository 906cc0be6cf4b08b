namespace gameseries {}
