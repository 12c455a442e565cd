#include <stdexcept>

#include "selorder/cli/json_io.hpp"

namespace nlohmann {

namespace {
mpz_class const safe_limit = mpz_class(1) << 53;
}

void adl_serializer<mpz_class>::to_json(json & j, mpz_class const & x)
{
    if (abs(x) < safe_limit)
        j = x.get_si();
    else
        j = x.get_str();
}

void adl_serializer<mpz_class>::from_json(json const & j, mpz_class & x)
{
    if (j.is_number_integer()) {
        x = mpz_class(std::to_string(j.get<std::int64_t>()));
    } else if (j.is_string()) {
        if (x.set_str(j.get<std::string>(), 10) != 0)
            throw std::invalid_argument("not a decimal integer: " + j.get<std::string>());
    } else {
        throw std::invalid_argument("expected an integer, got " + j.dump());
    }
}

} // namespace nlohmann
