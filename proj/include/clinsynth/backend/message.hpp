#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace clinsynth::backend {

enum class Role { system, user, assistant };

std::string_view to_string(Role role);

struct ChatMessage {
    Role role = Role::user;
    std::string content;

    bool operator==(const ChatMessage&) const = default;
};

inline ChatMessage system_msg(std::string content) {
    return {Role::system, std::move(content)};
}
inline ChatMessage user_msg(std::string content) {
    return {Role::user, std::move(content)};
}
inline ChatMessage assistant_msg(std::string content) {
    return {Role::assistant, std::move(content)};
}

/// Throws std::invalid_argument on an empty list or empty user/assistant
/// content.
void validate_messages(const std::vector<ChatMessage>& messages);

}  // namespace clinsynth::backend
