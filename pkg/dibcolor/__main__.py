from dibcolor.app import run

run()
