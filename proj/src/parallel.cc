#include <homdist/parallel.hh>

#include <cstdlib>
#include <string>

namespace homdist
{
    auto resolve_threads(int requested) -> int
    {
        if (requested > 0)
            return requested;
        if (const char * env = std::getenv("HOMDIST_THREADS")) {
            try {
                int value = std::stoi(env);
                if (value > 0)
                    return value;
            }
            catch (const std::exception &) {
            }
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }
}
