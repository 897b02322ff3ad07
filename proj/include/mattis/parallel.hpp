#pragma once

namespace mattis {

// Serial runs are the reference implementation; parallel runs use OpenMP.
enum class Exec { serial, parallel };

// Thread count for parallel kernels: MATTIS_THREADS if set, else the OpenMP default.
int thread_count();

}  // namespace mattis
