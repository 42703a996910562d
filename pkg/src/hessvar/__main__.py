from hessvar.cli import main

raise SystemExit(main())
