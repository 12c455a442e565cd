#ifndef SELORDER_CLI_JSON_IO_HPP
#define SELORDER_CLI_JSON_IO_HPP

#include <optional>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

/* Integers within the 53-bit safe range are JSON numbers, larger ones
 * decimal strings.  Both forms are accepted on input. */

namespace nlohmann {

template <>
struct adl_serializer<mpz_class> {
    static void to_json(json & j, mpz_class const & x);
    static void from_json(json const & j, mpz_class & x);
};

template <typename T>
struct adl_serializer<std::optional<T>> {
    static void to_json(json & j, std::optional<T> const & x)
    {
        if (x)
            j = *x;
        else
            j = nullptr;
    }
    static void from_json(json const & j, std::optional<T> & x)
    {
        if (j.is_null())
            x.reset();
        else
            x = j.get<T>();
    }
};

} // namespace nlohmann

#endif /* SELORDER_CLI_JSON_IO_HPP */
