#include "simon_mbqc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include <json.hpp>

#include "simonsim/error.hpp"
#include "simonsim/reports.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
sm_status guarded(char** out, Fn&& fn) {
    if (out == nullptr) {
        g_last_error = "output pointer is null";
        return SM_ERR_BAD_ARG;
    }
    try {
        std::string result = fn();
        char* dup = dup_string(result);
        if (dup == nullptr) {
            g_last_error = "allocation failure";
            return SM_ERR_INTERNAL;
        }
        *out = dup;
        g_last_error.clear();
        return SM_OK;
    } catch (const simonsim::CapacityError& e) {
        g_last_error = e.what();
        return SM_ERR_CAPACITY;
    } catch (const simonsim::DomainError& e) {
        g_last_error = e.what();
        return SM_ERR_DOMAIN;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return SM_ERR_BAD_ARG;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SM_ERR_INTERNAL;
    }
}

sm_status require(const char* arg, const char* what) {
    if (arg == nullptr) {
        g_last_error = std::string(what) + " is null";
        return SM_ERR_BAD_ARG;
    }
    return SM_OK;
}

}  // namespace

extern "C" {

const char* sm_version(void) { return "1.0.0"; }

const char* sm_last_error(void) { return g_last_error.c_str(); }

void sm_string_free(char* s) { std::free(s); }

sm_status sm_run_json(const char* config_json, char** out_json) {
    if (sm_status st = require(config_json, "config"); st != SM_OK) return st;
    return guarded(out_json,
                   [&] { return simonsim::reports::run_report(config_json); });
}

sm_status sm_tomo_json(const char* config_json, char** out_json) {
    if (sm_status st = require(config_json, "config"); st != SM_OK) return st;
    return guarded(out_json,
                   [&] { return simonsim::reports::tomo_report(config_json); });
}

sm_status sm_baseline_json(const char* config_json, char** out_json) {
    if (sm_status st = require(config_json, "config"); st != SM_OK) return st;
    return guarded(out_json,
                   [&] { return simonsim::reports::baseline_report(config_json); });
}

sm_status sm_spnn_run_json(const char* config_json, char** out_json) {
    if (sm_status st = require(config_json, "config"); st != SM_OK) return st;
    return guarded(out_json,
                   [&] { return simonsim::reports::spnn_run_report(config_json); });
}

sm_status sm_catalog_json(char** out_json) {
    return guarded(out_json, [] { return simonsim::reports::catalog_report(); });
}

sm_status sm_resource_counts_json(int n, char** out_json) {
    return guarded(out_json, [&] { return simonsim::reports::resource_counts(n); });
}

sm_status sm_resource_dot(const char* resource_name, char** out_dot) {
    if (sm_status st = require(resource_name, "resource name"); st != SM_OK) return st;
    return guarded(out_dot,
                   [&] { return simonsim::reports::resource_dot(resource_name); });
}

sm_status sm_pattern_json(const char* bb_id, int flips, char** out_json) {
    if (sm_status st = require(bb_id, "bb id"); st != SM_OK) return st;
    return guarded(out_json,
                   [&] { return simonsim::reports::pattern_json_for(bb_id, flips); });
}

}  // extern "C"
