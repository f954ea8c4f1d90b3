#include "schreier/parallel.hpp"

#include <cstdlib>
#include <string>

namespace schreier {

std::size_t worker_count()
{
    if (const char* env = std::getenv("SCHREIER_KIT_THREADS"); env != nullptr && *env != '\0') {
        try {
            const long value = std::stol(env);
            if (value >= 1)
                return static_cast<std::size_t>(value);
        } catch (const std::exception&) {
            // Unparsable values fall through to the default.
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

} // namespace schreier
