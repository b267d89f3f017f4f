#pragma once

#include <string>
#include <string_view>

namespace semrank {

/// Classic Porter (1980) suffix stripper, matching the reference
/// implementation (including its two documented departures, bli->ble and
/// logi->log). Input is assumed lowercase; words of one or two characters
/// are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace semrank
