#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace hmp {

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string text;
  std::vector<std::string> image_paths;  // attached as data URLs
};

// Minimal chat-completion interface shared by the planner and monitor.
// Implementations throw TransportError on network failure or timeout.
class ChatClient {
 public:
  virtual ~ChatClient() = default;
  virtual std::string complete(const std::vector<ChatMessage>& messages) = 0;
};

struct RemoteEndpoint {
  std::string url;  // e.g. https://api.openai.com/v1/chat/completions
  std::string model;
  std::string api_key_env;  // name of the environment variable holding the key
  double timeout_s = 30.0;
};

// OpenAI-style chat-completions client over HTTP(S).
class HttpChatClient : public ChatClient {
 public:
  explicit HttpChatClient(RemoteEndpoint endpoint);
  std::string complete(const std::vector<ChatMessage>& messages) override;

  const RemoteEndpoint& endpoint() const { return endpoint_; }

 private:
  RemoteEndpoint endpoint_;
};

// Builds the request body sent by HttpChatClient; exposed for tests.
std::string chat_request_body(const std::string& model, const std::vector<ChatMessage>& messages);
// Extracts choices[0].message.content; throws TransportError on other shapes.
std::string chat_response_content(const std::string& body);

// Scripted replies for tests and offline runs. Each call consumes the next
// reply; the last one repeats. A reply equal to kTimeout raises a timed-out
// TransportError instead.
class MockChatClient : public ChatClient {
 public:
  static constexpr const char* kTimeout = "<timeout>";

  explicit MockChatClient(std::vector<std::string> replies);
  std::string complete(const std::vector<ChatMessage>& messages) override;

  std::size_t calls() const { return calls_; }
  const std::vector<ChatMessage>& last_request() const { return last_; }

 private:
  std::vector<std::string> replies_;
  std::size_t calls_ = 0;
  std::vector<ChatMessage> last_;
};

}  // namespace hmp
