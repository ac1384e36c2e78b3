#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "tribokit/oeis.hpp"

namespace tribokit::oeis {

Transport http_transport(std::string base_url) {
    while (!base_url.empty() && base_url.back() == '/') base_url.pop_back();
    return [base = std::move(base_url)](std::string_view id) -> std::string {
        httplib::Client client(base);
        client.set_connection_timeout(10);
        client.set_read_timeout(30);
        client.set_follow_location(true);
        const std::string path = "/" + std::string(id) + "/" + bfile_name(id);
        auto res = client.Get(path);
        if (!res) {
            throw std::runtime_error(base + path + ": " + httplib::to_string(res.error()));
        }
        if (res->status != 200) {
            throw std::runtime_error(base + path + ": HTTP " + std::to_string(res->status));
        }
        return res->body;
    };
}

}  // namespace tribokit::oeis
