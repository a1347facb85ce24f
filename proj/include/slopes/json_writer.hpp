#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace slopes {

// Minimal streaming JSON writer for report files. Numbers are emitted with
// 17 significant digits (%.17g), which round-trips binary64 exactly and
// keeps repeated runs byte-identical. Key order is insertion order.
class JsonWriter {
public:
    JsonWriter();

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& name);

    JsonWriter& value(double v);
    JsonWriter& value(long long v);
    JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v) { return value(std::string(v)); }
    JsonWriter& null();

    template <typename T>
    JsonWriter& field(const std::string& name, const T& v) {
        key(name);
        return value(v);
    }
    JsonWriter& field(const std::string& name, double v) {
        key(name);
        return value(v);
    }

    JsonWriter& values(const std::vector<double>& vs);

    const std::string& str() const { return out_; }

private:
    void separator();
    void indent();
    std::string out_;
    std::vector<bool> first_in_scope_;
    bool pending_key_ = false;
};

std::string format_double(double v); // %.17g with nan/inf mapped to null

// Writes content to path atomically (temp file in the same directory, then
// rename). Throws ConfigError on IO failure.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace slopes
