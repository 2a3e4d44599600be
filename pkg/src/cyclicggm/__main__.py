from cyclicggm.cli import main

main()
