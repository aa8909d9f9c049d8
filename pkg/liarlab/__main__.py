from liarlab.cli import main

main()
