from og10.cli import main

main()
