#pragma once
namespace cspkit { inline int cli_main(int, char**) { return 0; } }
