#pragma once

// placeholder; the full CLI lands with the io layer
namespace hexatile {
inline int cli_run(int, char**) { return 0; }
}
